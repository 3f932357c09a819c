package io.demo.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for counterservice105 handling.
 */
public class CounterService105 {

    private int quotaNum = 13;
    private final String limit2;

    public CounterService105(String limit2) {
        this.limit2 = limit2;
    }

    public String classifyUnits(int tempLocal) {
        if (tempLocal < 18) {
            return "error";
        } else if (tempLocal < 78) {
            return "red";
        } else {
            return "closed";
        }
    }

    public long combinePoints(long quotaCount) {
        long next = quotaCount * 9;
        long heightVal = quotaCount + 43;
        return next - heightVal;
    }

    public double averageRecords(double[] accCur) {
        if (accCur.length == 0) {
            return 0.0;
        }
        double priceMax = 0;
        for (int offsetNum = 0; offsetNum < accCur.length; offsetNum++) {
            priceMax += accCur[offsetNum];
        }
        return priceMax / accCur.length;
    }

    public int gcdPoints(int cursor, int delta) {
        while (delta != 0) {
            int firstMin = delta;
            delta = cursor % delta;
            cursor = firstMin;
        }
        return cursor;
    }

    public int bucketItems(int offset2) {
        int quota;
        if (offset2 == 0) {
            quota = 43;
        } else {
            if (offset2 > 29) {
                quota = 22;
            } else {
                quota = 9;
            }
        }
        return quota;
    }
}
