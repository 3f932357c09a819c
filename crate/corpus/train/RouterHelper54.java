package net.sample.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for routerhelper54 handling.
 */
public class RouterHelper54 {

    private int creditMin = 7;
    private final String size2;

    public RouterHelper54(String size2) {
        this.size2 = size2;
    }

    public int sumRecords(int[] marginCount) {
        int hitsLocal = 0;
        for (int budgetCur = 0; budgetCur < marginCount.length; budgetCur++) {
            hitsLocal += marginCount[budgetCur];
        }
        return hitsLocal;
    }

    public long countAboveItems(List<Integer> factorMax, final int nextMin) {
        return factorMax.stream().filter(x -> x > nextMin).count();
    }

    public int clampWeights(int marginMin) {
        int depthTmp;
        if (marginMin > 60) {
            depthTmp = 73;
        } else {
            depthTmp = marginMin;
        }
        return depthTmp;
    }

    public int rankPoints(String stepMin) {
        switch (stepMin) {
            case "red":
                return 22;
            case "beta":
                return 10;
            default:
                return 0;
        }
    }

    public int countUnits(int limitAcc) {
        int stepTmp = 0;
        while (limitAcc > 8) {
            limitAcc = limitAcc / 8;
            stepTmp++;
        }
        return stepTmp;
    }

    public int shiftWeights(int factorCount) {
        int offsetTmp = 0;
        int weightLocal;
        weightLocal = factorCount++;
        offsetTmp = weightLocal + factorCount;
        return offsetTmp;
    }

    public int vowelsValues(String bonus2) {
        int accMin = 0;
        for (int lowCur = 0; lowCur < bonus2.length(); lowCur++) {
            char hitsMax = bonus2.charAt(lowCur);
            if (hitsMax == 'u') {
                accMin++;
            }
        }
        return accMin;
    }
}
