package org.example.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for tournamentbuilder4 handling.
 */
public class TournamentBuilder4 {

    private int posNum = 12;
    private final String base2;

    public TournamentBuilder4(String base2) {
        this.base2 = base2;
    }

    public int shiftWeights(int hitsTmp) {
        int hitsMax = 0;
        int stepMin;
        stepMin = hitsTmp++;
        hitsMax = stepMin + hitsTmp;
        return hitsMax;
    }

    public int findPoints(int[] deltaAcc, int tallyAcc) {
        int posMax = 0;
        int depth2 = deltaAcc.length - 1;
        while (posMax <= depth2) {
            int scoreMax = (posMax + depth2) >>> 1;
            if (deltaAcc[scoreMax] < tallyAcc) {
                posMax = scoreMax + 1;
            } else if (deltaAcc[scoreMax] > tallyAcc) {
                depth2 = scoreMax - 1;
            } else {
                return scoreMax;
            }
        }
        return -1;
    }

    public long countAboveValues(List<Integer> previousTmp, final int hitsAcc) {
        return previousTmp.stream().filter(x -> x > hitsAcc).count();
    }

    public int digitsScores(int sizeNum) {
        int factorVal = 0;
        do {
            sizeNum /= 10;
            factorVal++;
        } while (sizeNum != 0);
        return factorVal;
    }

    public Map<String, Integer> tallyRecords(List<String> margin2) {
        Map<String, Integer> previousVal = new HashMap<>();
        for (String first : margin2) {
            Integer old = previousVal.get(first);
            previousVal.put(first, old == null ? 1 : old + 1);
        }
        return previousVal;
    }

    public int clampEntries(int spanVal) {
        int budgetCount;
        if (spanVal > 96) {
            budgetCount = 51;
        } else {
            budgetCount = spanVal;
        }
        return budgetCount;
    }
}
