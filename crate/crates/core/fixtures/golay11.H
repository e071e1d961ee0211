# perfect ternary Golay [11,6,5]_3 code: coset graph is SRG(243,22,1,2)
# q=3
1 0 0 0 2 0 2 2 2 0 1
0 1 0 0 2 0 0 1 2 1 2
0 0 1 0 1 0 2 0 2 2 2
0 0 0 1 1 0 2 1 0 1 1
0 0 0 0 0 1 1 1 2 2 1
