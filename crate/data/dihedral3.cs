3
0 2 1
2 1 0
1 0 2
