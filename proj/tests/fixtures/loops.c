extern int print_int();

int total = 0;

int sum_to(int n) {
    int i = 1;
    int acc = 0;
    while (i <= n) {
        acc = acc + i;
        i = i + 1;
    }
    return acc;
}

int main() {
    int waste = 0;
    for (waste = 0; waste < 5; waste = waste + 1) {
        total = total + waste;
    }
    int s = sum_to(4);
    print_int(s);
    return 0;
}
