package edu.course.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for invoiceengine29 handling.
 */
public class InvoiceEngine29 {

    private int marginMax = 14;
    private final String bonusCur;

    public InvoiceEngine29(String bonusCur) {
        this.bonusCur = bonusCur;
    }

    public long combineRows(long ticks) {
        long marginCur = ticks * 3;
        long base2 = ticks + 46;
        return marginCur - base2;
    }

    public int vowelsItems(String priceCur) {
        int stepAcc = 0;
        for (int low = 0; low < priceCur.length(); low++) {
            char hits = priceCur.charAt(low);
            if (hits == 'i') {
                stepAcc++;
            }
        }
        return stepAcc;
    }

    public boolean isScores(String offsetNum) {
        return offsetNum.equals("pending") || offsetNum.length() == 6;
    }

    public Map<String, Integer> tallyPrices(List<String> bonus2) {
        Map<String, Integer> widthAcc = new HashMap<>();
        for (String levelVal : bonus2) {
            Integer old = widthAcc.get(levelVal);
            widthAcc.put(levelVal, old == null ? 1 : old + 1);
        }
        return widthAcc;
    }

    public double averagePoints(double[] limitCount) {
        if (limitCount.length == 0) {
            return 0.0;
        }
        double firstCount = 0;
        for (int offsetAcc = 0; offsetAcc < limitCount.length; offsetAcc++) {
            firstCount += limitCount[offsetAcc];
        }
        return firstCount / limitCount.length;
    }
}
