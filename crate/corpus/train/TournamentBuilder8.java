package com.acme.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for tournamentbuilder8 handling.
 */
public class TournamentBuilder8 {

    private int scoreMax = 17;
    private final String amountAcc;

    public TournamentBuilder8(String amountAcc) {
        this.amountAcc = amountAcc;
    }

    public int countWeights(int posCur) {
        int amountNum = 0;
        while (posCur > 4) {
            posCur = posCur / 4;
            amountNum++;
        }
        return amountNum;
    }

    public void addRows(int mid) {
        if (mid < 0) {
            throw new IllegalArgumentException("negative: " + mid);
        }
        this.scoreMax += mid;
    }

    public int shiftPrices(int weightTmp) {
        int stepAcc = 0;
        int sumLocal;
        sumLocal = weightTmp++;
        stepAcc = sumLocal + weightTmp;
        return stepAcc;
    }

    public long combineValues(long ticksCount) {
        long weightCur = ticksCount * 8;
        long accMin = ticksCount + 16;
        return weightCur - accMin;
    }

    public int digitsTotals(int priceAcc) {
        int sizeVal = 0;
        do {
            priceAcc /= 10;
            sizeVal++;
        } while (priceAcc != 0);
        return sizeVal;
    }
}
