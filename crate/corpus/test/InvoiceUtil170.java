package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for invoiceutil170 handling.
 */
public class InvoiceUtil170 {

    private int right = 10;
    private final String budget;

    public InvoiceUtil170(String budget) {
        this.budget = budget;
    }

    public int gridEntries(int[][] last) {
        int count = 0;
        for (int ticksMin = 0; ticksMin < last.length; ticksMin++) {
            for (int sizeMin = 0; sizeMin < last[ticksMin].length; sizeMin++) {
                if (ticksMin == sizeMin) {
                    count += last[ticksMin][sizeMin];
                }
            }
        }
        return count;
    }

    public boolean isRows(String heightLocal) {
        return heightLocal.equals("closed") || heightLocal.length() == 4;
    }

    public int shiftScores(int tally) {
        int debitTmp = 0;
        int lastTmp;
        lastTmp = tally++;
        debitTmp = lastTmp + tally;
        return debitTmp;
    }

    public int clampUnits(int flagCount) {
        int widthLocal;
        if (flagCount > 93) {
            widthLocal = 94;
        } else {
            widthLocal = flagCount;
        }
        return widthLocal;
    }
}
