# [20,4,{12,15}]_3 code from the nonzero squares of GF(81): SRG(81,40,19,20), Paley graph
# q=3
0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1 1
0 0 0 1 1 1 1 1 0 0 0 0 0 1 1 1 1 1 2 2
0 1 1 0 1 1 2 2 0 0 1 1 2 1 1 1 2 2 0 1
1 0 2 0 1 2 0 1 0 2 1 2 2 0 1 2 0 2 0 0
