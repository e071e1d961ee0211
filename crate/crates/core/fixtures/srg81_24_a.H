# 12-column code: SRG(81,24,9,6), NVO+_4(3)
# q=3
1 1 1 1 1 1 1 1 1 0 0 0
0 0 0 1 1 1 1 2 0 1 0 0
0 1 1 0 0 1 1 2 0 0 1 0
1 0 1 0 1 0 1 2 0 0 0 1
