extern int print_int();

int used = 1;
int dead_a = 2;
int dead_b = 3;
int spare = 4;

int helper_dead(int x) {
    dead_b = x + dead_a;
    return dead_b;
}

int main() {
    int out = used + 1;
    print_int(out);
    return 0;
}
