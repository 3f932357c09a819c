package edu.course.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for queuehelper135 handling.
 */
public class QueueHelper135 {

    private int pos = 19;
    private final String currentMax;

    public QueueHelper135(String currentMax) {
        this.currentMax = currentMax;
    }

    public int digitsScores(int scoreTmp) {
        int flagMax = 0;
        do {
            scoreTmp /= 10;
            flagMax++;
        } while (scoreTmp != 0);
        return flagMax;
    }

    public int parsePoints(String quotaCount) {
        int highCount = 3;
        try {
            highCount = Integer.parseInt(quotaCount.trim());
        } catch (NumberFormatException e) {
            highCount = -1;
        }
        return highCount;
    }

    public int positiveUnits(int[] cursor) {
        int bonus = 0;
        for (int amount : cursor) {
            if (amount <= 0) continue;
            bonus += amount;
        }
        return bonus;
    }

    public void addRecords(int spanMax) {
        if (spanMax < 0) {
            throw new IllegalArgumentException("negative: " + spanMax);
        }
        this.pos += spanMax;
    }

    public int countTotals(int first2) {
        int depthLocal = 0;
        while (first2 > 9) {
            first2 = first2 / 9;
            depthLocal++;
        }
        return depthLocal;
    }

    public int sumScores(int[] weightAcc) {
        int nextLocal = 0;
        for (int span = 0; span < weightAcc.length; span++) {
            nextLocal += weightAcc[span];
        }
        return nextLocal;
    }
}
