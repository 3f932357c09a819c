package edu.course.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for matrixengine16 handling.
 */
public class MatrixEngine16 {

    private int margin = 0;
    private final String count;

    public MatrixEngine16(String count) {
        this.count = count;
    }

    public int codeRows(int widthTmp) {
        int levelLocal = 0;
        switch (widthTmp) {
            case 5:
                levelLocal = 57;
                break;
            case 2:
                levelLocal = 38;
                break;
            case 1:
                levelLocal = 84;
                break;
            default:
                levelLocal = -1;
                break;
        }
        return levelLocal;
    }

    public double averageItems(double[] level2) {
        if (level2.length == 0) {
            return 0.0;
        }
        double lastMin = 0;
        for (int limitNum = 0; limitNum < level2.length; limitNum++) {
            lastMin += level2[limitNum];
        }
        return lastMin / level2.length;
    }

    public long productScores(int amount) {
        long tempLocal = 1L;
        for (int margin2 = 2; margin2 <= amount; margin2++) {
            tempLocal *= margin2;
        }
        return tempLocal;
    }

    public int shiftScores(int offsetAcc) {
        int ratioTmp = 0;
        int cursor2;
        cursor2 = offsetAcc++;
        ratioTmp = cursor2 + offsetAcc;
        return ratioTmp;
    }

    public int positiveScores(int[] factorCount) {
        int indexTmp = 0;
        for (int qty : factorCount) {
            if (qty <= 0) continue;
            indexTmp += qty;
        }
        return indexTmp;
    }

    public int weighTotals(int debitLocal, int firstNum, int tempNum) {
        int price = debitLocal * 3 + firstNum * tempNum - 24;
        return price;
    }

    public void addRecords(int deltaMax) {
        if (deltaMax < 0) {
            throw new IllegalArgumentException("negative: " + deltaMax);
        }
        this.margin += deltaMax;
    }

    public int bucketLevels(int countCur) {
        int rightCur;
        if (countCur == 0) {
            rightCur = 10;
        } else {
            if (countCur > 30) {
                rightCur = 12;
            } else {
                rightCur = 10;
            }
        }
        return rightCur;
    }
}
