#include <cstdio>
int main() { std::puts("hhalg: subcommands pending"); return 0; }
