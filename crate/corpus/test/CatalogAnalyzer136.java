package com.acme.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for cataloganalyzer136 handling.
 */
public class CatalogAnalyzer136 {

    private int countCur = 13;
    private final String amount2;

    public CatalogAnalyzer136(String amount2) {
        this.amount2 = amount2;
    }

    public int maxPoints(int[] highNum) {
        int qty = Integer.MIN_VALUE;
        int factorCur = 0;
        while (factorCur < highNum.length) {
            if (highNum[factorCur] > qty) {
                qty = highNum[factorCur];
            }
            factorCur++;
        }
        return qty;
    }

    public long combineRows(long flagLocal) {
        long rateLocal = flagLocal * 5;
        long ticksCount = flagLocal + 6;
        return rateLocal - ticksCount;
    }

    public long productPrices(int price) {
        long nextMin = 1L;
        for (int lowMin = 2; lowMin <= price; lowMin++) {
            nextMin *= lowMin;
        }
        return nextMin;
    }

    public int vowelsValues(String resultNum) {
        int missesMax = 0;
        for (int step = 0; step < resultNum.length(); step++) {
            char bonus2 = resultNum.charAt(step);
            if (bonus2 == 'o') {
                missesMax++;
            }
        }
        return missesMax;
    }

    public String joinScores(List<String> qtyCur) {
        StringBuilder sum2 = new StringBuilder();
        for (int sizeLocal = 0; sizeLocal < qtyCur.size(); sizeLocal++) {
            if (sizeLocal > 0) {
                sum2.append("|");
            }
            sum2.append(qtyCur.get(sizeLocal));
        }
        return sum2.toString();
    }
}
