extern int print_int();
extern int print_str();

int limit = 5;

int helper_one(int a) {
    return a + limit;
}

int helper_two(int a, int b) {
    int t = helper_one(a);
    return t * b;
}

int main() {
    int v = helper_two(2, 3);
    print_int(v);
    print_str("done");
    return 0;
}
