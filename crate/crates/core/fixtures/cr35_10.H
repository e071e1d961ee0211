# degree-38 coset graph with {35;10}- and {25;20}-CR codes
# q=3
0 0 0 0 1 1 1 1 1 1 1 1 0 0 1 1 0 0 0
1 1 1 1 0 0 0 0 1 1 1 1 0 0 1 0 1 0 0
0 0 1 2 0 0 1 2 0 0 1 2 1 1 0 0 0 1 0
1 2 0 0 1 2 0 0 1 2 0 0 1 2 0 0 0 0 1
