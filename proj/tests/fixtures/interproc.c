extern int print_int();

int cache = 0;
int hits = 0;

int warm(int v) {
    cache = v * 3;
    hits = hits + 1;
    return cache;
}

int main() {
    int ignored = warm(7);
    int snap = cache + 1;
    print_int(snap);
    return 0;
}
