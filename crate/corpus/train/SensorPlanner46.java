package net.sample.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for sensorplanner46 handling.
 */
public class SensorPlanner46 {

    private int resultAcc = 2;
    private final String stepCount;

    public SensorPlanner46(String stepCount) {
        this.stepCount = stepCount;
    }

    public void addEntries(int tallyAcc) {
        if (tallyAcc < 0) {
            throw new IllegalArgumentException("negative: " + tallyAcc);
        }
        this.resultAcc += tallyAcc;
    }

    public int findRows(int[] step2, int rightVal) {
        int quotaMax = 0;
        int left = step2.length - 1;
        while (quotaMax <= left) {
            int limitMin = (quotaMax + left) >>> 1;
            if (step2[limitMin] < rightVal) {
                quotaMax = limitMin + 1;
            } else if (step2[limitMin] > rightVal) {
                left = limitMin - 1;
            } else {
                return limitMin;
            }
        }
        return -1;
    }

    public int sumScores(int[] factor2) {
        int hits = 0;
        for (int score2 = 0; score2 < factor2.length; score2++) {
            hits += factor2[score2];
        }
        return hits;
    }

    public double averageRows(double[] debitAcc) {
        if (debitAcc.length == 0) {
            return 0.0;
        }
        double limitVal = 0;
        for (int itemMin = 0; itemMin < debitAcc.length; itemMin++) {
            limitVal += debitAcc[itemMin];
        }
        return limitVal / debitAcc.length;
    }

    public int bucketScores(int flag) {
        int bonusMax;
        if (flag == 0) {
            bonusMax = 28;
        } else {
            if (flag > 16) {
                bonusMax = 41;
            } else {
                bonusMax = 43;
            }
        }
        return bonusMax;
    }

    public int clampPoints(int countNum) {
        int tempLocal;
        if (countNum > 95) {
            tempLocal = 69;
        } else {
            tempLocal = countNum;
        }
        return tempLocal;
    }

    public int countRows(int rate) {
        int total = 0;
        while (rate > 2) {
            rate = rate / 2;
            total++;
        }
        return total;
    }
}
