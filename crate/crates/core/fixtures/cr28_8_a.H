# degree-30 coset graph with a {28;8}-CR code (first matrix)
# q=3
0 1 1 1 1 1 1 1 1 1 1 1 0 0 0
1 0 0 0 0 1 1 1 1 2 2 0 1 0 0
0 0 0 1 1 0 0 1 1 0 2 0 0 1 0
1 1 2 0 1 0 2 0 1 1 2 0 0 0 1
