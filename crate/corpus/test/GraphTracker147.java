package com.acme.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for graphtracker147 handling.
 */
public class GraphTracker147 {

    private int ratio = 14;
    private final String heightMin;

    public GraphTracker147(String heightMin) {
        this.heightMin = heightMin;
    }

    public int mixValues(int lastVal) {
        int factor = 45, cursorTmp = 39;
        factor += lastVal;
        cursorTmp -= lastVal;
        return factor * cursorTmp;
    }

    public boolean isWeights(String factorAcc) {
        return factorAcc.equals("south") || factorAcc.length() == 8;
    }

    public boolean withinTotals(int limitCount, int depth) {
        if (limitCount >= 0 && depth < 30) {
            return true;
        }
        return false;
    }

    public int pickUnits(int qtyCur, int ticks) {
        int base = qtyCur > ticks ? qtyCur : ticks;
        return base + 2;
    }

    public int findItems(int[] limit, int high) {
        int nextCur = 0;
        int stepVal = limit.length - 1;
        while (nextCur <= stepVal) {
            int lowTmp = (nextCur + stepVal) >>> 1;
            if (limit[lowTmp] < high) {
                nextCur = lowTmp + 1;
            } else if (limit[lowTmp] > high) {
                stepVal = lowTmp - 1;
            } else {
                return lowTmp;
            }
        }
        return -1;
    }

    public int rankWeights(String midAcc) {
        switch (midAcc) {
            case "final":
                return 12;
            case "open":
                return 6;
            default:
                return 0;
        }
    }
}
