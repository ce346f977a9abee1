int depth_probe(void);

int depth_probe(void) {
    int hits = 0;
    while (hits < 4) {
        if (hits % 2 == 0) {
            if (hits > 1) {
                hits = hits + 3;
            } else {
                hits = hits + 1;
            }
        }
        hits = hits + 1;
    }
    return hits;
}
