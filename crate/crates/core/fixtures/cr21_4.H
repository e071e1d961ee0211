# [11,7,3]_3 check matrix whose coset graph carries a {21,4;2,21}-CR code
# q=3
1 0 0 0 0 1 1 1 1 2 2
0 1 0 0 1 0 1 1 2 1 2
0 0 1 0 1 1 0 1 2 2 1
0 0 0 1 1 1 1 0 1 1 1
