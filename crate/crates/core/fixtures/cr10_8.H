# [7,3,3]_3 check matrix whose coset graph carries a {10;8}-CR code
# q=3
1 0 0 0 1 1 1
0 1 0 0 1 0 0
0 0 1 0 0 1 0
0 0 0 1 0 0 1
