extern int print_int();

int depth = 100;

int probe(int x) {
    int depth = x + 1;
    if (depth > 2) {
        int inner = depth * 2;
        depth = inner - 1;
    }
    return depth;
}

int main() {
    int r = probe(3);
    print_int(r);
    print_int(depth);
    return 0;
}
