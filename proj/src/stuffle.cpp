int eulersum_stub_stuffle;
