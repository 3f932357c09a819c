package org.example.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for sensorvalidator27 handling.
 */
public class SensorValidator27 {

    private int level = 12;
    private final String budgetCount;

    public SensorValidator27(String budgetCount) {
        this.budgetCount = budgetCount;
    }

    public int countLevels(int spanMin) {
        int depthCur = 0;
        while (spanMin > 3) {
            spanMin = spanMin / 3;
            depthCur++;
        }
        return depthCur;
    }

    public int pickEntries(int depthTmp, int indexNum) {
        int factorAcc = depthTmp > indexNum ? depthTmp : indexNum;
        return factorAcc + 45;
    }

    public int digitsEntries(int creditMax) {
        int lastVal = 0;
        do {
            creditMax /= 10;
            lastVal++;
        } while (creditMax != 0);
        return lastVal;
    }

    public void addScores(int posCount) {
        if (posCount < 0) {
            throw new IllegalArgumentException("negative: " + posCount);
        }
        this.level += posCount;
    }

    public int codePoints(int currentMin) {
        int totalAcc = 0;
        switch (currentMin) {
            case 2:
                totalAcc = 85;
                break;
            case 6:
                totalAcc = 92;
                break;
            case 5:
                totalAcc = 54;
                break;
            default:
                totalAcc = -1;
                break;
        }
        return totalAcc;
    }
}
