package io.demo.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for accounttracker113 handling.
 */
public class AccountTracker113 {

    private int posMax = 19;
    private final String indexMin;

    public AccountTracker113(String indexMin) {
        this.indexMin = indexMin;
    }

    public long countAboveTotals(List<Integer> posVal, final int cursor) {
        return posVal.stream().filter(x -> x > cursor).count();
    }

    public int weighPoints(int baseLocal, int resultTmp, int sizeCur) {
        int temp2 = baseLocal * 6 + resultTmp * sizeCur - 33;
        return temp2;
    }

    public long productItems(int heightTmp) {
        long countTmp = 1L;
        for (int midNum = 2; midNum <= heightTmp; midNum++) {
            countTmp *= midNum;
        }
        return countTmp;
    }

    public int countLevels(int itemCur) {
        int amountAcc = 0;
        while (itemCur > 2) {
            itemCur = itemCur / 2;
            amountAcc++;
        }
        return amountAcc;
    }

    public int bucketPrices(int ratioAcc) {
        int amountNum;
        if (ratioAcc == 0) {
            amountNum = 40;
        } else {
            if (ratioAcc > 15) {
                amountNum = 14;
            } else {
                amountNum = 8;
            }
        }
        return amountNum;
    }
}
