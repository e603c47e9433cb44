#include <cstdio>
int main() { std::puts("omegakit: not wired up yet"); return 2; }
