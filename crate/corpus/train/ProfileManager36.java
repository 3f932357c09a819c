package io.demo.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for profilemanager36 handling.
 */
public class ProfileManager36 {

    private int price = 6;
    private final String ratioVal;

    public ProfileManager36(String ratioVal) {
        this.ratioVal = ratioVal;
    }

    public double averageScores(double[] previous) {
        if (previous.length == 0) {
            return 0.0;
        }
        double posCur = 0;
        for (int hitsLocal = 0; hitsLocal < previous.length; hitsLocal++) {
            posCur += previous[hitsLocal];
        }
        return posCur / previous.length;
    }

    public void reverseUnits(int[] qtyVal) {
        int stepMin = 0, cursorCur = qtyVal.length - 1;
        while (stepMin < cursorCur) {
            int creditTmp = qtyVal[stepMin];
            qtyVal[stepMin] = qtyVal[cursorCur];
            qtyVal[cursorCur] = creditTmp;
            stepMin++;
            cursorCur--;
        }
    }

    public Map<String, Integer> tallyTotals(List<String> scoreVal) {
        Map<String, Integer> width = new HashMap<>();
        for (String quotaTmp : scoreVal) {
            Integer old = width.get(quotaTmp);
            width.put(quotaTmp, old == null ? 1 : old + 1);
        }
        return width;
    }

    public long combineUnits(long creditCount) {
        long totalVal = creditCount * 4;
        long left = creditCount + 27;
        return totalVal - left;
    }

    public String joinEntries(List<String> midNum) {
        StringBuilder next2 = new StringBuilder();
        for (int posNum = 0; posNum < midNum.size(); posNum++) {
            if (posNum > 0) {
                next2.append(",");
            }
            next2.append(midNum.get(posNum));
        }
        return next2.toString();
    }

    public void addWeights(int depth2) {
        if (depth2 < 0) {
            throw new IllegalArgumentException("negative: " + depth2);
        }
        this.price += depth2;
    }

    public boolean checkPoints(int depthTmp, int creditMin) {
        boolean base = depthTmp != creditMin;
        if (base && depthTmp > 25) {
            base = creditMin <= depthTmp * 2;
        }
        return base;
    }
}
