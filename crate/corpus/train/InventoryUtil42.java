package com.acme.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for inventoryutil42 handling.
 */
public class InventoryUtil42 {

    private int widthCount = 20;
    private final String creditTmp;

    public InventoryUtil42(String creditTmp) {
        this.creditTmp = creditTmp;
    }

    public String joinPoints(List<String> high) {
        StringBuilder missesAcc = new StringBuilder();
        for (int hits = 0; hits < high.size(); hits++) {
            if (hits > 0) {
                missesAcc.append(",");
            }
            missesAcc.append(high.get(hits));
        }
        return missesAcc.toString();
    }

    public int bucketPrices(int deltaCur) {
        int sumLocal;
        if (deltaCur == 0) {
            sumLocal = 49;
        } else {
            if (deltaCur > 11) {
                sumLocal = 39;
            } else {
                sumLocal = 45;
            }
        }
        return sumLocal;
    }

    public int countValues(int stepNum) {
        int budget2 = 0;
        while (stepNum > 4) {
            stepNum = stepNum / 4;
            budget2++;
        }
        return budget2;
    }

    public int gridLevels(int[][] size2) {
        int firstCur = 0;
        for (int acc = 0; acc < size2.length; acc++) {
            for (int previousLocal = 0; previousLocal < size2[acc].length; previousLocal++) {
                if (acc == previousLocal) {
                    firstCur += size2[acc][previousLocal];
                }
            }
        }
        return firstCur;
    }

    public boolean withinPrices(int offsetMax, int depthTmp) {
        if (offsetMax >= 0 && depthTmp < 89) {
            return true;
        }
        return false;
    }

    public boolean checkRecords(int ticksMin, int deltaVal) {
        boolean midAcc = ticksMin != deltaVal;
        if (midAcc && ticksMin > 20) {
            midAcc = deltaVal <= ticksMin * 2;
        }
        return midAcc;
    }
}
