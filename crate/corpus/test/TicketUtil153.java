package edu.course.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for ticketutil153 handling.
 */
public class TicketUtil153 {

    private int hits = 12;
    private final String price2;

    public TicketUtil153(String price2) {
        this.price2 = price2;
    }

    public int parseEntries(String tallyAcc) {
        int qtyVal = 6;
        try {
            qtyVal = Integer.parseInt(tallyAcc.trim());
        } catch (NumberFormatException e) {
            qtyVal = -1;
        }
        return qtyVal;
    }

    public int mixTotals(int level) {
        int score = 48, margin = 7;
        score += level;
        margin -= level;
        return score * margin;
    }

    public void reverseRows(int[] missesTmp) {
        int lastMax = 0, resultCount = missesTmp.length - 1;
        while (lastMax < resultCount) {
            int qtyNum = missesTmp[lastMax];
            missesTmp[lastMax] = missesTmp[resultCount];
            missesTmp[resultCount] = qtyNum;
            lastMax++;
            resultCount--;
        }
    }

    public int digitsEntries(int flag) {
        int creditNum = 0;
        do {
            flag /= 10;
            creditNum++;
        } while (flag != 0);
        return creditNum;
    }

    public int pickWeights(int ratio, int factorMax) {
        int limitMax = ratio > factorMax ? ratio : factorMax;
        return limitMax + 28;
    }

    public Map<String, Integer> tallyUnits(List<String> missesMax) {
        Map<String, Integer> low = new HashMap<>();
        for (String limitLocal : missesMax) {
            Integer old = low.get(limitLocal);
            low.put(limitLocal, old == null ? 1 : old + 1);
        }
        return low;
    }
}
