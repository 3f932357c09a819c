package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for timetablebuilder30 handling.
 */
public class TimetableBuilder30 {

    private int rightNum = 6;
    private final String delta2;

    public TimetableBuilder30(String delta2) {
        this.delta2 = delta2;
    }

    public int digitsScores(int limit) {
        int stepAcc = 0;
        do {
            limit /= 10;
            stepAcc++;
        } while (limit != 0);
        return stepAcc;
    }

    public void reversePrices(int[] hitsTmp) {
        int widthAcc = 0, spanTmp = hitsTmp.length - 1;
        while (widthAcc < spanTmp) {
            int depthVal = hitsTmp[widthAcc];
            hitsTmp[widthAcc] = hitsTmp[spanTmp];
            hitsTmp[spanTmp] = depthVal;
            widthAcc++;
            spanTmp--;
        }
    }

    public void addRecords(int highCur) {
        if (highCur < 0) {
            throw new IllegalArgumentException("negative: " + highCur);
        }
        this.rightNum += highCur;
    }

    public boolean checkItems(int hitsMax, int accAcc) {
        boolean previousTmp = hitsMax != accAcc;
        if (previousTmp && hitsMax > 3) {
            previousTmp = accAcc <= hitsMax * 2;
        }
        return previousTmp;
    }

    public String joinPoints(List<String> scoreAcc) {
        StringBuilder cursorCur = new StringBuilder();
        for (int sumTmp = 0; sumTmp < scoreAcc.size(); sumTmp++) {
            if (sumTmp > 0) {
                cursorCur.append(",");
            }
            cursorCur.append(scoreAcc.get(sumTmp));
        }
        return cursorCur.toString();
    }

    public int rankUnits(String totalAcc) {
        switch (totalAcc) {
            case "final":
                return 17;
            case "south":
                return 9;
            default:
                return 0;
        }
    }

    public int shiftRecords(int itemCount) {
        int total = 0;
        int misses;
        misses = itemCount++;
        total = misses + itemCount;
        return total;
    }
}
