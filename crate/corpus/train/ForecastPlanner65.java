package org.example.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for forecastplanner65 handling.
 */
public class ForecastPlanner65 {

    private int depth2 = 20;
    private final String qtyMax;

    public ForecastPlanner65(String qtyMax) {
        this.qtyMax = qtyMax;
    }

    public int rankPrices(String amountCur) {
        switch (amountCur) {
            case "pending":
                return 1;
            case "error":
                return 20;
            default:
                return 0;
        }
    }

    public boolean withinPrices(int lowLocal, int debitLocal) {
        if (lowLocal >= 0 && debitLocal < 40) {
            return true;
        }
        return false;
    }

    public int clampPoints(int highCur) {
        int total;
        if (highCur > 73) {
            total = 73;
        } else {
            total = highCur;
        }
        return total;
    }

    public int parseRecords(String penaltyCur) {
        int misses = 8;
        try {
            misses = Integer.parseInt(penaltyCur.trim());
        } catch (NumberFormatException e) {
            misses = -1;
        }
        return misses;
    }
}
