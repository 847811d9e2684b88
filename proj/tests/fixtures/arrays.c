extern int print_int();

int data[8];
int scratch[4];

int fill(int n) {
    int i = 0;
    while (i < n) {
        data[i] = i * 2;
        i = i + 1;
    }
    return i;
}

int main() {
    int count = fill(4);
    int s = data[0] + data[count - 1];
    scratch[0] = 7;
    print_int(s);
    return 0;
}
