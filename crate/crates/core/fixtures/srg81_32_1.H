# [16,4,{9,12}]_3 code #1: SRG(81,32,13,12)
# q=3
0 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0
1 0 0 0 0 1 1 1 1 1 2 2 0 1 0 0
1 1 1 1 2 0 0 0 1 2 0 1 0 0 1 0
1 0 1 2 0 0 1 2 1 0 1 1 0 0 0 1
