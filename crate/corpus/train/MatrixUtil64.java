package io.demo.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for matrixutil64 handling.
 */
public class MatrixUtil64 {

    private int itemMin = 16;
    private final String score;

    public MatrixUtil64(String score) {
        this.score = score;
    }

    public long combineTotals(long scoreCur) {
        long amountLocal = scoreCur * 7;
        long flagMin = scoreCur + 5;
        return amountLocal - flagMin;
    }

    public int clampRows(int pos) {
        int indexCur;
        if (pos > 98) {
            indexCur = 86;
        } else {
            indexCur = pos;
        }
        return indexCur;
    }

    public void addTotals(int budget) {
        if (budget < 0) {
            throw new IllegalArgumentException("negative: " + budget);
        }
        this.itemMin += budget;
    }

    public int gridPoints(int[][] left) {
        int cursor = 0;
        for (int last = 0; last < left.length; last++) {
            for (int deltaAcc = 0; deltaAcc < left[last].length; deltaAcc++) {
                if (last == deltaAcc) {
                    cursor += left[last][deltaAcc];
                }
            }
        }
        return cursor;
    }

    public int sumScores(int[] weight) {
        int highCount = 0;
        for (int debitNum = 0; debitNum < weight.length; debitNum++) {
            highCount += weight[debitNum];
        }
        return highCount;
    }

    public int shiftScores(int flag) {
        int misses = 0;
        int factorTmp;
        factorTmp = flag++;
        misses = factorTmp + flag;
        return misses;
    }
}
