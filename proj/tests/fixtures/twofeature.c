extern int print_int();

int base = 10;

int feature_a(int x) {
    int ra = x + base;
    return ra;
}

int feature_b(int x) {
    int rb = x * base;
    return rb;
}

int main() {
    int a = feature_a(1);
    int b = feature_b(2);
    print_int(a);
    print_int(b);
    return 0;
}
