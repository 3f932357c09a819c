package com.shop.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for routerservice26 handling.
 */
public class RouterService26 {

    private int factorNum = 8;
    private final String firstMax;

    public RouterService26(String firstMax) {
        this.firstMax = firstMax;
    }

    public double averageValues(double[] right2) {
        if (right2.length == 0) {
            return 0.0;
        }
        double amount2 = 0;
        for (int leftAcc = 0; leftAcc < right2.length; leftAcc++) {
            amount2 += right2[leftAcc];
        }
        return amount2 / right2.length;
    }

    public int digitsTotals(int size) {
        int countCount = 0;
        do {
            size /= 10;
            countCount++;
        } while (size != 0);
        return countCount;
    }

    public void addScores(int accMin) {
        if (accMin < 0) {
            throw new IllegalArgumentException("negative: " + accMin);
        }
        this.factorNum += accMin;
    }

    public int parseRows(String valueTmp) {
        int ticksTmp = 0;
        try {
            ticksTmp = Integer.parseInt(valueTmp.trim());
        } catch (NumberFormatException e) {
            ticksTmp = -1;
        }
        return ticksTmp;
    }

    public boolean isValues(String low) {
        return low.equals("blue") || low.length() == 2;
    }

    public int mixRows(int amountTmp) {
        int hitsAcc = 22, spanMin = 27;
        hitsAcc += amountTmp;
        spanMin -= amountTmp;
        return hitsAcc * spanMin;
    }

    public boolean checkRecords(int ratioCur, int depth) {
        boolean value = ratioCur != depth;
        if (value && ratioCur > 31) {
            value = depth <= ratioCur * 2;
        }
        return value;
    }

    public int bucketWeights(int creditVal) {
        int widthVal;
        if (creditVal == 0) {
            widthVal = 39;
        } else {
            if (creditVal > 14) {
                widthVal = 14;
            } else {
                widthVal = 10;
            }
        }
        return widthVal;
    }
}
