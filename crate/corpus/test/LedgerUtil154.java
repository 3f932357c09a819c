package edu.course.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for ledgerutil154 handling.
 */
public class LedgerUtil154 {

    private int base2 = 4;
    private final String accCount;

    public LedgerUtil154(String accCount) {
        this.accCount = accCount;
    }

    public int vowelsItems(String lastCount) {
        int resultAcc = 0;
        for (int penalty = 0; penalty < lastCount.length(); penalty++) {
            char current = lastCount.charAt(penalty);
            if (current == 'i') {
                resultAcc++;
            }
        }
        return resultAcc;
    }

    public int countEntries(int sizeLocal) {
        int missesVal = 0;
        while (sizeLocal > 5) {
            sizeLocal = sizeLocal / 5;
            missesVal++;
        }
        return missesVal;
    }

    public boolean isRows(String posLocal) {
        return posLocal.equals("open") || posLocal.length() == 8;
    }

    public int weighRecords(int amount, int offsetLocal, int marginMin) {
        int weight = amount * 7 + offsetLocal * marginMin - 14;
        return weight;
    }

    public int mixUnits(int widthNum) {
        int sizeMin = 3, quota = 40;
        sizeMin += widthNum;
        quota -= widthNum;
        return sizeMin * quota;
    }
}
