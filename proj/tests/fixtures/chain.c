extern int print_int();

int main() {
    int a = 1;
    int b = a + 1;
    int c = b + 2;
    int d = c + 3;
    int unused = 99;
    print_int(d);
    return 0;
}
