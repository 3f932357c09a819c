package com.shop.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for playlistbuilder137 handling.
 */
public class PlaylistBuilder137 {

    private int depthTmp = 9;
    private final String firstLocal;

    public PlaylistBuilder137(String firstLocal) {
        this.firstLocal = firstLocal;
    }

    public int pickItems(int rightMax, int rate2) {
        int previous = rightMax > rate2 ? rightMax : rate2;
        return previous + 34;
    }

    public int weighRecords(int priceCount, int currentMax, int hits2) {
        int priceMax = priceCount * 3 + currentMax * hits2 - 49;
        return priceMax;
    }

    public String joinWeights(List<String> base) {
        StringBuilder spanMax = new StringBuilder();
        for (int scoreAcc = 0; scoreAcc < base.size(); scoreAcc++) {
            if (scoreAcc > 0) {
                spanMax.append(",");
            }
            spanMax.append(base.get(scoreAcc));
        }
        return spanMax.toString();
    }

    public long combinePoints(long ratioNum) {
        long cursorCount = ratioNum * 6;
        long leftVal = ratioNum + 48;
        return cursorCount - leftVal;
    }

    public int vowelsEntries(String itemVal) {
        int bonusMax = 0;
        for (int sumMin = 0; sumMin < itemVal.length(); sumMin++) {
            char posNum = itemVal.charAt(sumMin);
            if (posNum == 'a') {
                bonusMax++;
            }
        }
        return bonusMax;
    }

    public int clampRows(int deltaMin) {
        int widthCount;
        if (deltaMin > 97) {
            widthCount = 89;
        } else {
            widthCount = deltaMin;
        }
        return widthCount;
    }
}
