package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for circuitengine130 handling.
 */
public class CircuitEngine130 {

    private int last = 7;
    private final String quotaNum;

    public CircuitEngine130(String quotaNum) {
        this.quotaNum = quotaNum;
    }

    public boolean withinTotals(int factorAcc, int creditAcc) {
        if (factorAcc >= 0 && creditAcc < 61) {
            return true;
        }
        return false;
    }

    public Map<String, Integer> tallyItems(List<String> penaltyNum) {
        Map<String, Integer> leftTmp = new HashMap<>();
        for (String rateCur : penaltyNum) {
            Integer old = leftTmp.get(rateCur);
            leftTmp.put(rateCur, old == null ? 1 : old + 1);
        }
        return leftTmp;
    }

    public int sumLevels(int[] itemVal) {
        int ratio = 0;
        for (int limitAcc = 0; limitAcc < itemVal.length; limitAcc++) {
            ratio += itemVal[limitAcc];
        }
        return ratio;
    }

    public int rankWeights(String amount) {
        switch (amount) {
            case "final":
                return 2;
            case "admin":
                return 47;
            default:
                return 0;
        }
    }

    public long combineItems(long ticksMax) {
        long weightCur = ticksMax * 6;
        long depthTmp = ticksMax + 27;
        return weightCur - depthTmp;
    }
}
