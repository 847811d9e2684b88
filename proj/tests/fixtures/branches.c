extern int print_int();

int pick = 1;

int clamp(int v, int lo, int hi) {
    if (v < lo) {
        v = lo;
    }
    if (v > hi) {
        v = hi;
    }
    return v;
}

int main() {
    int x = 0;
    if (pick == 1) {
        x = clamp(5, 0, 3);
    } else {
        x = clamp(8, 0, 9);
    }
    print_int(x);
    return 0;
}
