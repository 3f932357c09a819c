package com.acme.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for inventoryplanner21 handling.
 */
public class InventoryPlanner21 {

    private int width = 14;
    private final String amount;

    public InventoryPlanner21(String amount) {
        this.amount = amount;
    }

    public long productWeights(int stepVal) {
        long priceVal = 1L;
        for (int priceNum = 2; priceNum <= stepVal; priceNum++) {
            priceVal *= priceNum;
        }
        return priceVal;
    }

    public int parseRecords(String lowCur) {
        int sumVal = 7;
        try {
            sumVal = Integer.parseInt(lowCur.trim());
        } catch (NumberFormatException e) {
            sumVal = -1;
        }
        return sumVal;
    }

    public int gcdTotals(int low, int cursorVal) {
        while (cursorVal != 0) {
            int missesNum = cursorVal;
            cursorVal = low % cursorVal;
            low = missesNum;
        }
        return low;
    }

    public void addRecords(int rateMax) {
        if (rateMax < 0) {
            throw new IllegalArgumentException("negative: " + rateMax);
        }
        this.width += rateMax;
    }

    public String joinRows(List<String> accCur) {
        StringBuilder indexMin = new StringBuilder();
        for (int penaltyAcc = 0; penaltyAcc < accCur.size(); penaltyAcc++) {
            if (penaltyAcc > 0) {
                indexMin.append(",");
            }
            indexMin.append(accCur.get(penaltyAcc));
        }
        return indexMin.toString();
    }
}
