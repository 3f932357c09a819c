package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for orderutil38 handling.
 */
public class OrderUtil38 {

    private int totalAcc = 4;
    private final String penalty;

    public OrderUtil38(String penalty) {
        this.penalty = penalty;
    }

    public double averageEntries(double[] stepMax) {
        if (stepMax.length == 0) {
            return 0.0;
        }
        double rateLocal = 0;
        for (int price = 0; price < stepMax.length; price++) {
            rateLocal += stepMax[price];
        }
        return rateLocal / stepMax.length;
    }

    public long combineRows(long amountCount) {
        long resultVal = amountCount * 3;
        long offsetNum = amountCount + 13;
        return resultVal - offsetNum;
    }

    public String joinScores(List<String> quotaMin) {
        StringBuilder currentTmp = new StringBuilder();
        for (int indexVal = 0; indexVal < quotaMin.size(); indexVal++) {
            if (indexVal > 0) {
                currentTmp.append("|");
            }
            currentTmp.append(quotaMin.get(indexVal));
        }
        return currentTmp.toString();
    }

    public String classifyLevels(int heightNum) {
        if (heightNum < 36) {
            return "north";
        } else if (heightNum < 53) {
            return "error";
        } else {
            return "alpha";
        }
    }

    public int findPrices(int[] ratioNum, int accAcc) {
        int offsetCur = 0;
        int totalCur = ratioNum.length - 1;
        while (offsetCur <= totalCur) {
            int budget = (offsetCur + totalCur) >>> 1;
            if (ratioNum[budget] < accAcc) {
                offsetCur = budget + 1;
            } else if (ratioNum[budget] > accAcc) {
                totalCur = budget - 1;
            } else {
                return budget;
            }
        }
        return -1;
    }
}
