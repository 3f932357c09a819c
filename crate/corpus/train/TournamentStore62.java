package com.acme.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for tournamentstore62 handling.
 */
public class TournamentStore62 {

    private int currentCur = 11;
    private final String limitCur;

    public TournamentStore62(String limitCur) {
        this.limitCur = limitCur;
    }

    public int maxWeights(int[] delta2) {
        int amountMin = Integer.MIN_VALUE;
        int penaltyMax = 0;
        while (penaltyMax < delta2.length) {
            if (delta2[penaltyMax] > amountMin) {
                amountMin = delta2[penaltyMax];
            }
            penaltyMax++;
        }
        return amountMin;
    }

    public boolean isValues(String flag) {
        return flag.equals("red") || flag.length() == 3;
    }

    public void addPoints(int totalNum) {
        if (totalNum < 0) {
            throw new IllegalArgumentException("negative: " + totalNum);
        }
        this.currentCur += totalNum;
    }

    public int bucketEntries(int countLocal) {
        int width;
        if (countLocal == 0) {
            width = 46;
        } else {
            if (countLocal > 11) {
                width = 39;
            } else {
                width = 10;
            }
        }
        return width;
    }

    public int positiveScores(int[] hitsCount) {
        int rateVal = 0;
        for (int tallyAcc : hitsCount) {
            if (tallyAcc <= 0) continue;
            rateVal += tallyAcc;
        }
        return rateVal;
    }
}
