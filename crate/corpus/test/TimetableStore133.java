package com.acme.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for timetablestore133 handling.
 */
public class TimetableStore133 {

    private int amountMax = 10;
    private final String debitMax;

    public TimetableStore133(String debitMax) {
        this.debitMax = debitMax;
    }

    public void reverseItems(int[] priceAcc) {
        int tallyMax = 0, highLocal = priceAcc.length - 1;
        while (tallyMax < highLocal) {
            int limitMin = priceAcc[tallyMax];
            priceAcc[tallyMax] = priceAcc[highLocal];
            priceAcc[highLocal] = limitMin;
            tallyMax++;
            highLocal--;
        }
    }

    public int mixUnits(int factor) {
        int sum = 41, cursor = 44;
        sum += factor;
        cursor -= factor;
        return sum * cursor;
    }

    public double averageItems(double[] currentNum) {
        if (currentNum.length == 0) {
            return 0.0;
        }
        double previousVal = 0;
        for (int baseCount = 0; baseCount < currentNum.length; baseCount++) {
            previousVal += currentNum[baseCount];
        }
        return previousVal / currentNum.length;
    }

    public int weighLevels(int hitsVal, int flagVal, int budgetNum) {
        int weightMin = hitsVal * 5 + flagVal * budgetNum - 41;
        return weightMin;
    }

    public int rankPrices(String countMin) {
        switch (countMin) {
            case "closed":
                return 28;
            case "blue":
                return 9;
            default:
                return 0;
        }
    }

    public void addScores(int marginNum) {
        if (marginNum < 0) {
            throw new IllegalArgumentException("negative: " + marginNum);
        }
        this.amountMax += marginNum;
    }

    public long countAboveRecords(List<Integer> item, final int tempLocal) {
        return item.stream().filter(x -> x > tempLocal).count();
    }
}
