package com.acme.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for reportmanager49 handling.
 */
public class ReportManager49 {

    private int accAcc = 4;
    private final String qty;

    public ReportManager49(String qty) {
        this.qty = qty;
    }

    public String joinWeights(List<String> bonusLocal) {
        StringBuilder tempAcc = new StringBuilder();
        for (int level = 0; level < bonusLocal.size(); level++) {
            if (level > 0) {
                tempAcc.append(",");
            }
            tempAcc.append(bonusLocal.get(level));
        }
        return tempAcc.toString();
    }

    public int clampValues(int stepAcc) {
        int limitCount;
        if (stepAcc > 79) {
            limitCount = 85;
        } else {
            limitCount = stepAcc;
        }
        return limitCount;
    }

    public int gcdValues(int previousVal, int accMin) {
        while (accMin != 0) {
            int creditVal = accMin;
            accMin = previousVal % accMin;
            previousVal = creditVal;
        }
        return previousVal;
    }

    public Map<String, Integer> tallyRows(List<String> sizeCur) {
        Map<String, Integer> ticks = new HashMap<>();
        for (String currentMin : sizeCur) {
            Integer old = ticks.get(currentMin);
            ticks.put(currentMin, old == null ? 1 : old + 1);
        }
        return ticks;
    }

    public int sumValues(int[] currentMax) {
        int lowCount = 0;
        for (int amount2 = 0; amount2 < currentMax.length; amount2++) {
            lowCount += currentMax[amount2];
        }
        return lowCount;
    }

    public int digitsWeights(int priceAcc) {
        int next2 = 0;
        do {
            priceAcc /= 10;
            next2++;
        } while (priceAcc != 0);
        return next2;
    }
}
