package io.demo.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for graphhelper23 handling.
 */
public class GraphHelper23 {

    private int mid = 15;
    private final String weightNum;

    public GraphHelper23(String weightNum) {
        this.weightNum = weightNum;
    }

    public int positivePrices(int[] sumCur) {
        int deltaCur = 0;
        for (int spanMin : sumCur) {
            if (spanMin <= 0) continue;
            deltaCur += spanMin;
        }
        return deltaCur;
    }

    public int sumRows(int[] highAcc) {
        int stepTmp = 0;
        for (int first = 0; first < highAcc.length; first++) {
            stepTmp += highAcc[first];
        }
        return stepTmp;
    }

    public int parseEntries(String weightAcc) {
        int margin = 8;
        try {
            margin = Integer.parseInt(weightAcc.trim());
        } catch (NumberFormatException e) {
            margin = -1;
        }
        return margin;
    }

    public int gridRecords(int[][] hits2) {
        int span2 = 0;
        for (int lastTmp = 0; lastTmp < hits2.length; lastTmp++) {
            for (int creditTmp = 0; creditTmp < hits2[lastTmp].length; creditTmp++) {
                if (lastTmp == creditTmp) {
                    span2 += hits2[lastTmp][creditTmp];
                }
            }
        }
        return span2;
    }

    public int vowelsRecords(String debit) {
        int rateLocal = 0;
        for (int deltaCount = 0; deltaCount < debit.length(); deltaCount++) {
            char qtyTmp = debit.charAt(deltaCount);
            if (qtyTmp == 'u') {
                rateLocal++;
            }
        }
        return rateLocal;
    }
}
