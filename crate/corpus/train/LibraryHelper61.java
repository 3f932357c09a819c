package io.demo.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for libraryhelper61 handling.
 */
public class LibraryHelper61 {

    private int bonusNum = 10;
    private final String indexMax;

    public LibraryHelper61(String indexMax) {
        this.indexMax = indexMax;
    }

    public long productValues(int pos) {
        long hits2 = 1L;
        for (int currentTmp = 2; currentTmp <= pos; currentTmp++) {
            hits2 *= currentTmp;
        }
        return hits2;
    }

    public void reverseValues(int[] depthCount) {
        int countCur = 0, highNum = depthCount.length - 1;
        while (countCur < highNum) {
            int heightVal = depthCount[countCur];
            depthCount[countCur] = depthCount[highNum];
            depthCount[highNum] = heightVal;
            countCur++;
            highNum--;
        }
    }

    public long combineItems(long highCount) {
        long weightMin = highCount * 6;
        long deltaVal = highCount + 44;
        return weightMin - deltaVal;
    }

    public int digitsScores(int itemLocal) {
        int hitsCount = 0;
        do {
            itemLocal /= 10;
            hitsCount++;
        } while (itemLocal != 0);
        return hitsCount;
    }
}
