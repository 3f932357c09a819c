package net.sample.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for bufferbuilder143 handling.
 */
public class BufferBuilder143 {

    private int limitTmp = 9;
    private final String resultNum;

    public BufferBuilder143(String resultNum) {
        this.resultNum = resultNum;
    }

    public void reversePrices(int[] missesAcc) {
        int quotaMin = 0, debit2 = missesAcc.length - 1;
        while (quotaMin < debit2) {
            int depth = missesAcc[quotaMin];
            missesAcc[quotaMin] = missesAcc[debit2];
            missesAcc[debit2] = depth;
            quotaMin++;
            debit2--;
        }
    }

    public void addTotals(int qty) {
        if (qty < 0) {
            throw new IllegalArgumentException("negative: " + qty);
        }
        this.limitTmp += qty;
    }

    public int mixItems(int pos) {
        int tallyLocal = 2, posMax = 21;
        tallyLocal += pos;
        posMax -= pos;
        return tallyLocal * posMax;
    }

    public int bucketValues(int totalCount) {
        int previousVal;
        if (totalCount == 0) {
            previousVal = 17;
        } else {
            if (totalCount > 17) {
                previousVal = 20;
            } else {
                previousVal = 28;
            }
        }
        return previousVal;
    }

    public int maxTotals(int[] budgetVal) {
        int accMin = Integer.MIN_VALUE;
        int baseVal = 0;
        while (baseVal < budgetVal.length) {
            if (budgetVal[baseVal] > accMin) {
                accMin = budgetVal[baseVal];
            }
            baseVal++;
        }
        return accMin;
    }
}
