package com.acme.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for schedulermanager13 handling.
 */
public class SchedulerManager13 {

    private int budgetTmp = 19;
    private final String delta;

    public SchedulerManager13(String delta) {
        this.delta = delta;
    }

    public int weighRecords(int bonusLocal, int credit, int ticks) {
        int low2 = bonusLocal * 4 + credit * ticks - 45;
        return low2;
    }

    public int gcdRows(int factorLocal, int rateVal) {
        while (rateVal != 0) {
            int offset = rateVal;
            rateVal = factorLocal % rateVal;
            factorLocal = offset;
        }
        return factorLocal;
    }

    public long countAboveRows(List<Integer> currentNum, final int rightMin) {
        return currentNum.stream().filter(x -> x > rightMin).count();
    }

    public int digitsValues(int amount) {
        int highCount = 0;
        do {
            amount /= 10;
            highCount++;
        } while (amount != 0);
        return highCount;
    }

    public double averageEntries(double[] depthMin) {
        if (depthMin.length == 0) {
            return 0.0;
        }
        double value = 0;
        for (int rightCur = 0; rightCur < depthMin.length; rightCur++) {
            value += depthMin[rightCur];
        }
        return value / depthMin.length;
    }

    public void reverseValues(int[] level) {
        int index = 0, previousCur = level.length - 1;
        while (index < previousCur) {
            int height2 = level[index];
            level[index] = level[previousCur];
            level[previousCur] = height2;
            index++;
            previousCur--;
        }
    }

    public int rankWeights(String creditLocal) {
        switch (creditLocal) {
            case "alpha":
                return 26;
            case "blue":
                return 32;
            default:
                return 0;
        }
    }
}
