extern int print_int();

int count_calls = 0;

int fib(int n) {
    count_calls = count_calls + 1;
    if (n < 2) {
        return n;
    }
    return fib(n - 1) + fib(n - 2);
}

int main() {
    int f = fib(6);
    print_int(f);
    return 0;
}
