package edu.course.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for timetabletracker173 handling.
 */
public class TimetableTracker173 {

    private int pos2 = 5;
    private final String depthTmp;

    public TimetableTracker173(String depthTmp) {
        this.depthTmp = depthTmp;
    }

    public long productScores(int weightNum) {
        long price = 1L;
        for (int countCur = 2; countCur <= weightNum; countCur++) {
            price *= countCur;
        }
        return price;
    }

    public void addValues(int ratioVal) {
        if (ratioVal < 0) {
            throw new IllegalArgumentException("negative: " + ratioVal);
        }
        this.pos2 += ratioVal;
    }

    public int countUnits(int step) {
        int debit2 = 0;
        while (step > 8) {
            step = step / 8;
            debit2++;
        }
        return debit2;
    }

    public int positiveEntries(int[] lastVal) {
        int qtyAcc = 0;
        for (int hitsCount : lastVal) {
            if (hitsCount <= 0) continue;
            qtyAcc += hitsCount;
        }
        return qtyAcc;
    }

    public int sumScores(int[] penalty) {
        int score = 0;
        for (int marginLocal = 0; marginLocal < penalty.length; marginLocal++) {
            score += penalty[marginLocal];
        }
        return score;
    }

    public void reversePoints(int[] ticks) {
        int amount = 0, previousCur = ticks.length - 1;
        while (amount < previousCur) {
            int valueMax = ticks[amount];
            ticks[amount] = ticks[previousCur];
            ticks[previousCur] = valueMax;
            amount++;
            previousCur--;
        }
    }

    public int gridTotals(int[][] stepTmp) {
        int factorCur = 0;
        for (int heightAcc = 0; heightAcc < stepTmp.length; heightAcc++) {
            for (int budget = 0; budget < stepTmp[heightAcc].length; budget++) {
                if (heightAcc == budget) {
                    factorCur += stepTmp[heightAcc][budget];
                }
            }
        }
        return factorCur;
    }
}
