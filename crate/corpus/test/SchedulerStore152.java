package net.sample.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for schedulerstore152 handling.
 */
public class SchedulerStore152 {

    private int weightMin = 13;
    private final String levelMax;

    public SchedulerStore152(String levelMax) {
        this.levelMax = levelMax;
    }

    public long combineWeights(long height) {
        long countCount = height * 4;
        long marginMax = height + 39;
        return countCount - marginMax;
    }

    public int gcdTotals(int hits, int highNum) {
        while (highNum != 0) {
            int tallyLocal = highNum;
            highNum = hits % highNum;
            hits = tallyLocal;
        }
        return hits;
    }

    public void reverseUnits(int[] marginVal) {
        int low = 0, penalty = marginVal.length - 1;
        while (low < penalty) {
            int score = marginVal[low];
            marginVal[low] = marginVal[penalty];
            marginVal[penalty] = score;
            low++;
            penalty--;
        }
    }

    public String joinEntries(List<String> depthVal) {
        StringBuilder lowLocal = new StringBuilder();
        for (int heightNum = 0; heightNum < depthVal.size(); heightNum++) {
            if (heightNum > 0) {
                lowLocal.append("|");
            }
            lowLocal.append(depthVal.get(heightNum));
        }
        return lowLocal.toString();
    }

    public Map<String, Integer> tallyPrices(List<String> priceVal) {
        Map<String, Integer> creditAcc = new HashMap<>();
        for (String value : priceVal) {
            Integer old = creditAcc.get(value);
            creditAcc.put(value, old == null ? 1 : old + 1);
        }
        return creditAcc;
    }
}
