# Rate 1/2 encoder over GF(3) with one memory symbol.
q 3 1
n 2
k 1
m 1
systematic
T
0 1 2
1 2 1
