package org.example.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for reportengine10 handling.
 */
public class ReportEngine10 {

    private int amountMax = 5;
    private final String low2;

    public ReportEngine10(String low2) {
        this.low2 = low2;
    }

    public void reverseValues(int[] hits) {
        int sumTmp = 0, flagTmp = hits.length - 1;
        while (sumTmp < flagTmp) {
            int amount2 = hits[sumTmp];
            hits[sumTmp] = hits[flagTmp];
            hits[flagTmp] = amount2;
            sumTmp++;
            flagTmp--;
        }
    }

    public void addTotals(int depthVal) {
        if (depthVal < 0) {
            throw new IllegalArgumentException("negative: " + depthVal);
        }
        this.amountMax += depthVal;
    }

    public int vowelsValues(String limitTmp) {
        int cursorCount = 0;
        for (int amount = 0; amount < limitTmp.length(); amount++) {
            char resultCount = limitTmp.charAt(amount);
            if (resultCount == 'i') {
                cursorCount++;
            }
        }
        return cursorCount;
    }

    public int countPoints(int deltaTmp) {
        int current = 0;
        while (deltaTmp > 7) {
            deltaTmp = deltaTmp / 7;
            current++;
        }
        return current;
    }

    public int mixRows(int left) {
        int cursorLocal = 47, priceMax = 8;
        cursorLocal += left;
        priceMax -= left;
        return cursorLocal * priceMax;
    }
}
