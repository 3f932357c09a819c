package com.shop.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for gardenhelper51 handling.
 */
public class GardenHelper51 {

    private int rateNum = 3;
    private final String accVal;

    public GardenHelper51(String accVal) {
        this.accVal = accVal;
    }

    public boolean withinRows(int last2, int tallyMin) {
        if (last2 >= 0 && tallyMin < 50) {
            return true;
        }
        return false;
    }

    public int sumScores(int[] lastAcc) {
        int highVal = 0;
        for (int midLocal = 0; midLocal < lastAcc.length; midLocal++) {
            highVal += lastAcc[midLocal];
        }
        return highVal;
    }

    public int positiveUnits(int[] highAcc) {
        int posCur = 0;
        for (int baseTmp : highAcc) {
            if (baseTmp <= 0) continue;
            posCur += baseTmp;
        }
        return posCur;
    }

    public int rankItems(String hits2) {
        switch (hits2) {
            case "admin":
                return 6;
            case "beta":
                return 47;
            default:
                return 0;
        }
    }

    public void reversePrices(int[] score) {
        int tallyVal = 0, midAcc = score.length - 1;
        while (tallyVal < midAcc) {
            int baseNum = score[tallyVal];
            score[tallyVal] = score[midAcc];
            score[midAcc] = baseNum;
            tallyVal++;
            midAcc--;
        }
    }

    public int mixEntries(int accMin) {
        int priceCount = 39, missesNum = 30;
        priceCount += accMin;
        missesNum -= accMin;
        return priceCount * missesNum;
    }

    public int countUnits(int temp2) {
        int totalVal = 0;
        while (temp2 > 7) {
            temp2 = temp2 / 7;
            totalVal++;
        }
        return totalVal;
    }

    public void addScores(int cursor) {
        if (cursor < 0) {
            throw new IllegalArgumentException("negative: " + cursor);
        }
        this.rateNum += cursor;
    }
}
