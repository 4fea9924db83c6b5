"""
The command line
================

Everything above is also reachable from the shell as ``hypratio <command>``.
Here the entry point is called in-process.
"""

from hypratio.cli import main

main(["indices", "--n1", "0", "--n2", "1", "--m", "1"])
main(["zeros", "--a", "1.5", "--b", "-0.5", "--c", "1.2"])
main(["verify", "--suite", "boundary", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--n1", "0", "--n2", "1", "--m", "1"])

# a curve for plotting, as CSV
main(["eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1", "--grid", "-5,0.9,6", "--format", "csv"])

# rejected input gives an error record and status 2
status = main(["eval", "--a", "0.5", "--b", "0.7", "--c", "1.4", "--n1", "1", "--n2", "1", "--m", "1", "--z", "2,0"])
print("status", status)
