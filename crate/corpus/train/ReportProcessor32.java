package com.shop.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for reportprocessor32 handling.
 */
public class ReportProcessor32 {

    private int bonusMax = 4;
    private final String debit2;

    public ReportProcessor32(String debit2) {
        this.debit2 = debit2;
    }

    public double averageRecords(double[] flagNum) {
        if (flagNum.length == 0) {
            return 0.0;
        }
        double sumVal = 0;
        for (int indexMin = 0; indexMin < flagNum.length; indexMin++) {
            sumVal += flagNum[indexMin];
        }
        return sumVal / flagNum.length;
    }

    public int bucketValues(int ticks) {
        int rateLocal;
        if (ticks == 0) {
            rateLocal = 23;
        } else {
            if (ticks > 10) {
                rateLocal = 5;
            } else {
                rateLocal = 3;
            }
        }
        return rateLocal;
    }

    public int findEntries(int[] depth, int offsetNum) {
        int missesCount = 0;
        int levelCount = depth.length - 1;
        while (missesCount <= levelCount) {
            int valueCount = (missesCount + levelCount) >>> 1;
            if (depth[valueCount] < offsetNum) {
                missesCount = valueCount + 1;
            } else if (depth[valueCount] > offsetNum) {
                levelCount = valueCount - 1;
            } else {
                return valueCount;
            }
        }
        return -1;
    }

    public int pickItems(int countMin, int marginAcc) {
        int spanMin = countMin > marginAcc ? countMin : marginAcc;
        return spanMin + 26;
    }

    public boolean withinTotals(int quotaNum, int result) {
        if (quotaNum >= 0 && result < 31) {
            return true;
        }
        return false;
    }
}
