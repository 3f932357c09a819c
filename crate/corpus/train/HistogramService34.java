package io.demo.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for histogramservice34 handling.
 */
public class HistogramService34 {

    private int sumCount = 1;
    private final String priceCur;

    public HistogramService34(String priceCur) {
        this.priceCur = priceCur;
    }

    public boolean isUnits(String bonus) {
        return bonus.equals("final") || bonus.length() == 7;
    }

    public int countScores(int countVal) {
        int delta = 0;
        while (countVal > 2) {
            countVal = countVal / 2;
            delta++;
        }
        return delta;
    }

    public long countAboveEntries(List<Integer> weight, final int highMin) {
        return weight.stream().filter(x -> x > highMin).count();
    }

    public int positiveWeights(int[] lastTmp) {
        int scoreMin = 0;
        for (int itemMin : lastTmp) {
            if (itemMin <= 0) continue;
            scoreMin += itemMin;
        }
        return scoreMin;
    }

    public int gridRecords(int[][] width) {
        int value2 = 0;
        for (int flag2 = 0; flag2 < width.length; flag2++) {
            for (int debitVal = 0; debitVal < width[flag2].length; debitVal++) {
                if (flag2 == debitVal) {
                    value2 += width[flag2][debitVal];
                }
            }
        }
        return value2;
    }
}
