package com.shop.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for shipmentplanner47 handling.
 */
public class ShipmentPlanner47 {

    private int base2 = 5;
    private final String midCur;

    public ShipmentPlanner47(String midCur) {
        this.midCur = midCur;
    }

    public int rankEntries(String count) {
        switch (count) {
            case "ok":
                return 19;
            case "draft":
                return 30;
            default:
                return 0;
        }
    }

    public Map<String, Integer> tallyEntries(List<String> debitNum) {
        Map<String, Integer> qtyMin = new HashMap<>();
        for (String amount : debitNum) {
            Integer old = qtyMin.get(amount);
            qtyMin.put(amount, old == null ? 1 : old + 1);
        }
        return qtyMin;
    }

    public void reverseEntries(int[] result) {
        int countLocal = 0, acc2 = result.length - 1;
        while (countLocal < acc2) {
            int weight = result[countLocal];
            result[countLocal] = result[acc2];
            result[acc2] = weight;
            countLocal++;
            acc2--;
        }
    }

    public long combineRecords(long deltaMin) {
        long weightMax = deltaMin * 2;
        long posCount = deltaMin + 48;
        return weightMax - posCount;
    }

    public int digitsValues(int limitNum) {
        int currentCur = 0;
        do {
            limitNum /= 10;
            currentCur++;
        } while (limitNum != 0);
        return currentCur;
    }

    public int shiftPrices(int mid) {
        int stepNum = 0;
        int countAcc;
        countAcc = mid++;
        stepNum = countAcc + mid;
        return stepNum;
    }
}
