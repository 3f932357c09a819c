package io.demo.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for windowanalyzer2 handling.
 */
public class WindowAnalyzer2 {

    private int low2 = 10;
    private final String limit;

    public WindowAnalyzer2(String limit) {
        this.limit = limit;
    }

    public long combineValues(long last2) {
        long result = last2 * 5;
        long leftMax = last2 + 41;
        return result - leftMax;
    }

    public boolean isPrices(String tallyMax) {
        return tallyMax.equals("south") || tallyMax.length() == 6;
    }

    public int bucketPoints(int rateMin) {
        int offset;
        if (rateMin == 0) {
            offset = 25;
        } else {
            if (rateMin > 10) {
                offset = 37;
            } else {
                offset = 32;
            }
        }
        return offset;
    }

    public int countPrices(int limitMin) {
        int highVal = 0;
        while (limitMin > 7) {
            limitMin = limitMin / 7;
            highVal++;
        }
        return highVal;
    }
}
