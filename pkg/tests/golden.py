"""Hand-transcribed tables used as ground truth."""

# counting-function table for the first nine boxes of the mixed-capacity example
RHO_TABLE = {
    "v0": [6, 11, 21, 32, 39, 46, 53, 60, 67],
    "v1": [5, 10, 19, 30, 37, 44, 51, 58, 65],
    "v2": [4, 9, 17, 28, 35, 42, 49, 56, 63],
    "v3": [3, 8, 15, 24, 31, 38, 45, 52, 59],
    "v*3": [2, 6, 13, 24, 31, 38, 45, 52, 59],
    "w2-v2": [2, 5, 12, 20, 27, 34, 41, 48, 55],
    "w1-v1": [1, 3, 9, 17, 24, 31, 38, 45, 52],
    "v0^s1": [0, 2, 7, 15, 22, 29, 36, 43, 50],
}

TAU_TABLE = {
    0: [6, 11, 21, 32, 39, 46, 53, 60, 67],
    1: [0, 2, 7, 15, 22, 29, 36, 43, 50],
    2: [1, 3, 9, 16, 23, 30, 37, 44, 51],
    3: [2, 6, 13, 24, 31, 38, 45, 52, 59],
    4: [3, 8, 15, 24, 31, 38, 45, 52, 59],
}
PHI0_ROW = [1, 0, 1, 0, 0, 0, 0, 0, 0]
