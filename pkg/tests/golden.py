"""Krawtchouk and symmetric Krawtchouk matrices for N = 0..6, transcribed by hand."""

KRAW = {
    0: [[1]],
    1: [[1, 1],
        [1, -1]],
    2: [[1, 1, 1],
        [2, 0, -2],
        [1, -1, 1]],
    3: [[1, 1, 1, 1],
        [3, 1, -1, -3],
        [3, -1, -1, 3],
        [1, -1, 1, -1]],
    4: [[1, 1, 1, 1, 1],
        [4, 2, 0, -2, -4],
        [6, 0, -2, 0, 6],
        [4, -2, 0, 2, -4],
        [1, -1, 1, -1, 1]],
    5: [[1, 1, 1, 1, 1, 1],
        [5, 3, 1, -1, -3, -5],
        [10, 2, -2, -2, 2, 10],
        [10, -2, -2, 2, 2, -10],
        [5, -3, 1, 1, -3, 5],
        [1, -1, 1, -1, 1, -1]],
    6: [[1, 1, 1, 1, 1, 1, 1],
        [6, 4, 2, 0, -2, -4, -6],
        [15, 5, -1, -3, -1, 5, 15],
        [20, 0, -4, 0, 4, 0, -20],
        [15, -5, -1, 3, -1, -5, 15],
        [6, -4, 2, 0, -2, 4, -6],
        [1, -1, 1, -1, 1, -1, 1]],
}

SYM_KRAW = {
    0: [[1]],
    1: [[1, 1],
        [1, -1]],
    2: [[1, 2, 1],
        [2, 0, -2],
        [1, -2, 1]],
    3: [[1, 3, 3, 1],
        [3, 3, -3, -3],
        [3, -3, -3, 3],
        [1, -3, 3, -1]],
    4: [[1, 4, 6, 4, 1],
        [4, 8, 0, -8, -4],
        [6, 0, -12, 0, 6],
        [4, -8, 0, 8, -4],
        [1, -4, 6, -4, 1]],
    5: [[1, 5, 10, 10, 5, 1],
        [5, 15, 10, -10, -15, -5],
        [10, 10, -20, -20, 10, 10],
        [10, -10, -20, 20, 10, -10],
        [5, -15, 10, 10, -15, 5],
        [1, -5, 10, -10, 5, -1]],
    6: [[1, 6, 15, 20, 15, 6, 1],
        [6, 24, 30, 0, -30, -24, -6],
        [15, 30, -15, -60, -15, 30, 15],
        [20, 0, -60, 0, 60, 0, -20],
        [15, -30, -15, 60, -15, -30, 15],
        [6, -24, 30, 0, -30, 24, -6],
        [1, -6, 15, -20, 15, -6, 1]],
}

# Symmetric representation of H in degree 4.
H_BAR_4 = [[1, 4, 6, 4, 1],
           [1, 2, 0, -2, -1],
           [1, 0, -2, 0, 1],
           [1, -2, 0, 2, -1],
           [1, -4, 6, -4, 1]]

X_F_BAR_4 = [[0, 4, 0, 0, 0],
             [1, 0, 3, 0, 0],
             [0, 2, 0, 2, 0],
             [0, 0, 3, 0, 1],
             [0, 0, 0, 4, 0]]

X_G_BAR_4 = [[4, 0, 0, 0, 0],
             [0, 2, 0, 0, 0],
             [0, 0, 0, 0, 0],
             [0, 0, 0, -2, 0],
             [0, 0, 0, 0, -4]]

# Sylvester-Hadamard H_3 sign pattern, '+' = 1, '-' = -1.
H3_PATTERN = [
    "++++++++",
    "+-+-+-+-",
    "++--++--",
    "+--++--+",
    "++++----",
    "+-+--+-+",
    "++----++",
    "+--+-++-",
]
