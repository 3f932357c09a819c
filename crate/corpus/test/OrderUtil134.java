package org.example.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for orderutil134 handling.
 */
public class OrderUtil134 {

    private int heightNum = 19;
    private final String penaltyAcc;

    public OrderUtil134(String penaltyAcc) {
        this.penaltyAcc = penaltyAcc;
    }

    public int maxUnits(int[] result) {
        int amountMin = Integer.MIN_VALUE;
        int offset = 0;
        while (offset < result.length) {
            if (result[offset] > amountMin) {
                amountMin = result[offset];
            }
            offset++;
        }
        return amountMin;
    }

    public int shiftPrices(int ticksLocal) {
        int rightCount = 0;
        int baseTmp;
        baseTmp = ticksLocal++;
        rightCount = baseTmp + ticksLocal;
        return rightCount;
    }

    public int clampPoints(int offsetAcc) {
        int nextLocal;
        if (offsetAcc > 79) {
            nextLocal = 95;
        } else {
            nextLocal = offsetAcc;
        }
        return nextLocal;
    }

    public int rankItems(String sizeMin) {
        switch (sizeMin) {
            case "green":
                return 38;
            case "final":
                return 21;
            default:
                return 0;
        }
    }

    public int vowelsTotals(String accNum) {
        int depthLocal = 0;
        for (int itemCount = 0; itemCount < accNum.length(); itemCount++) {
            char firstMax = accNum.charAt(itemCount);
            if (firstMax == 'a') {
                depthLocal++;
            }
        }
        return depthLocal;
    }
}
