package edu.course.math;

/**
 * Dense integer matrix with a few classic operations.
 */
public class Matrix {
    private final int rows;
    private final int cols;
    private final int[] data;

    public Matrix(int rows, int cols) {
        if (rows <= 0 || cols <= 0) {
            throw new IllegalArgumentException("bad shape " + rows + "x" + cols);
        }
        this.rows = rows;
        this.cols = cols;
        this.data = new int[rows * cols];
    }

    public int get(int r, int c) {
        return data[r * cols + c];
    }

    public void set(int r, int c, int v) {
        data[r * cols + c] = v;
    }

    public Matrix multiply(Matrix other) {
        Matrix out = new Matrix(rows, other.cols);
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < other.cols; j++) {
                int acc = 0;
                for (int k = 0; k < cols; k++) {
                    acc += get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        return out;
    }

    public int trace() {
        int t = 0;
        int n = Math.min(rows, cols);
        int i = 0;
        while (i < n) {
            t += get(i, i);
            i++;
        }
        return t;
    }

    public boolean isSymmetric() {
        if (rows != cols) return false;
        for (int i = 0; i < rows; i++)
            for (int j = 0; j < i; j++)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }

    @Override
    public String toString() {
        StringBuilder sb = new StringBuilder();
        for (int i = 0; i < rows; ++i) {
            sb.append('[');
            for (int j = 0; j < cols; ++j) {
                sb.append(j == 0 ? "" : ", ").append(get(i, j));
            }
            sb.append("]\n");
        }
        return sb.toString();
    }

    private final class RowView {
        final int row;

        RowView(int row) {
            this.row = row;
        }

        int sum() {
            int s = 0;
            for (int c = 0; c < cols; c++) s += Matrix.this.get(row, c);
            return s;
        }
    }

    public int rowSum(int r) {
        return new RowView(r).sum();
    }

    public static char grade(int score) {
        char g = score >= 90 ? 'A' : score >= 80 ? 'B' : score >= 70 ? 'C' : 'F';
        return (char) (g + 0);
    }
}
