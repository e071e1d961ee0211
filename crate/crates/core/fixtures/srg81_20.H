# two-weight (10,4,{6,9})_3 code: SRG(81,20,1,6), Brouwer-Haemers graph
# q=3
0 1 1 1 1 1 1 0 0 0
1 0 1 1 2 2 0 1 0 0
1 1 0 2 1 2 0 0 1 0
1 1 2 0 2 1 0 0 0 1
