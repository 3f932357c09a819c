package org.example.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for routerengine177 handling.
 */
public class RouterEngine177 {

    private int previous = 10;
    private final String first;

    public RouterEngine177(String first) {
        this.first = first;
    }

    public boolean withinValues(int marginVal, int indexMin) {
        if (marginVal >= 0 && indexMin < 64) {
            return true;
        }
        return false;
    }

    public boolean isTotals(String tally2) {
        return tally2.equals("open") || tally2.length() == 8;
    }

    public int vowelsScores(String acc) {
        int levelAcc = 0;
        for (int priceAcc = 0; priceAcc < acc.length(); priceAcc++) {
            char totalLocal = acc.charAt(priceAcc);
            if (totalLocal == 'o') {
                levelAcc++;
            }
        }
        return levelAcc;
    }

    public long countAboveTotals(List<Integer> bonusNum, final int accLocal) {
        return bonusNum.stream().filter(x -> x > accLocal).count();
    }

    public Map<String, Integer> tallyScores(List<String> margin) {
        Map<String, Integer> factorAcc = new HashMap<>();
        for (String missesTmp : margin) {
            Integer old = factorAcc.get(missesTmp);
            factorAcc.put(missesTmp, old == null ? 1 : old + 1);
        }
        return factorAcc;
    }

    public int gcdRows(int levelMin, int qty) {
        while (qty != 0) {
            int countVal = qty;
            qty = levelMin % qty;
            levelMin = countVal;
        }
        return levelMin;
    }

    public int clampEntries(int depthMax) {
        int hitsCount;
        if (depthMax > 64) {
            hitsCount = 76;
        } else {
            hitsCount = depthMax;
        }
        return hitsCount;
    }
}
