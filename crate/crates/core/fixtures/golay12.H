# extended ternary Golay [12,6,6]_3 code (self-dual): coset graph is the DRG {24,22,20;1,2,12}
# q=3
1 0 0 0 0 0 0 1 1 1 1 1
0 1 0 0 0 0 1 0 1 2 2 1
0 0 1 0 0 0 1 1 0 1 2 2
0 0 0 1 0 0 1 2 1 0 1 2
0 0 0 0 1 0 1 2 2 1 0 1
0 0 0 0 0 1 1 1 2 2 1 0
