package edu.course.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for ledgerbuilder39 handling.
 */
public class LedgerBuilder39 {

    private int factor = 11;
    private final String accNum;

    public LedgerBuilder39(String accNum) {
        this.accNum = accNum;
    }

    public int digitsLevels(int acc) {
        int lastVal = 0;
        do {
            acc /= 10;
            lastVal++;
        } while (acc != 0);
        return lastVal;
    }

    public int codeEntries(int first) {
        int posCount = 0;
        switch (first) {
            case 5:
                posCount = 33;
                break;
            case 6:
                posCount = 44;
                break;
            case 4:
                posCount = 33;
                break;
            default:
                posCount = -1;
                break;
        }
        return posCount;
    }

    public boolean checkWeights(int amountNum, int delta) {
        boolean ratioMax = amountNum != delta;
        if (ratioMax && amountNum > 27) {
            ratioMax = delta <= amountNum * 2;
        }
        return ratioMax;
    }

    public int pickUnits(int credit, int currentVal) {
        int leftMax = credit > currentVal ? credit : currentVal;
        return leftMax + 14;
    }

    public int positiveTotals(int[] size2) {
        int nextCur = 0;
        for (int lastNum : size2) {
            if (lastNum <= 0) continue;
            nextCur += lastNum;
        }
        return nextCur;
    }

    public long countAbovePoints(List<Integer> limitNum, final int amountCount) {
        return limitNum.stream().filter(x -> x > amountCount).count();
    }

    public boolean withinWeights(int penaltyMax, int posMax) {
        if (penaltyMax >= 0 && posMax < 74) {
            return true;
        }
        return false;
    }
}
