using System;
using System.Collections.Generic;

namespace Demo.Broken
{
    public class Registry
    {
        private readonly Dictionary<string, int> _items = new Dictionary<string, int>(;

        public void Add(string key, int value)
        {
            _items[key] = value
        }

        public int Get(string key) =>
            _items.TryGetValue(key, out var v) ? v : ;
    }
