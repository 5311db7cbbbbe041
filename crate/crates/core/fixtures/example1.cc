# Rate 1/2 binary encoder with two memory bits, systematic form.
# Rows: two memory rows (C A) then the input row (E B).
q 2 1
n 2
k 1
m 2
systematic
T
0 1 0 1
0 0 1 0
1 1 1 0
