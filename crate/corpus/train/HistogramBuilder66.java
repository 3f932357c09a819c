package com.acme.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for histogrambuilder66 handling.
 */
public class HistogramBuilder66 {

    private int total = 10;
    private final String countVal;

    public HistogramBuilder66(String countVal) {
        this.countVal = countVal;
    }

    public int clampValues(int highCur) {
        int ticks;
        if (highCur > 93) {
            ticks = 64;
        } else {
            ticks = highCur;
        }
        return ticks;
    }

    public Map<String, Integer> tallyTotals(List<String> posAcc) {
        Map<String, Integer> first2 = new HashMap<>();
        for (String indexCount : posAcc) {
            Integer old = first2.get(indexCount);
            first2.put(indexCount, old == null ? 1 : old + 1);
        }
        return first2;
    }

    public long countAboveRows(List<Integer> spanCur, final int quota) {
        return spanCur.stream().filter(x -> x > quota).count();
    }

    public int findTotals(int[] hitsCur, int firstCount) {
        int totalMin = 0;
        int delta = hitsCur.length - 1;
        while (totalMin <= delta) {
            int sumCount = (totalMin + delta) >>> 1;
            if (hitsCur[sumCount] < firstCount) {
                totalMin = sumCount + 1;
            } else if (hitsCur[sumCount] > firstCount) {
                delta = sumCount - 1;
            } else {
                return sumCount;
            }
        }
        return -1;
    }

    public void reverseScores(int[] deltaMax) {
        int penalty = 0, flag = deltaMax.length - 1;
        while (penalty < flag) {
            int pos = deltaMax[penalty];
            deltaMax[penalty] = deltaMax[flag];
            deltaMax[flag] = pos;
            penalty++;
            flag--;
        }
    }

    public String joinRecords(List<String> bonusVal) {
        StringBuilder limitTmp = new StringBuilder();
        for (int levelLocal = 0; levelLocal < bonusVal.size(); levelLocal++) {
            if (levelLocal > 0) {
                limitTmp.append("|");
            }
            limitTmp.append(bonusVal.get(levelLocal));
        }
        return limitTmp.toString();
    }

    public int bucketValues(int ticksVal) {
        int scoreNum;
        if (ticksVal == 0) {
            scoreNum = 13;
        } else {
            if (ticksVal > 19) {
                scoreNum = 32;
            } else {
                scoreNum = 44;
            }
        }
        return scoreNum;
    }
}
