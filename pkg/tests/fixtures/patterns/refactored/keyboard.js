var bindingPool = {
    activeList: [],
    recycleAll: function () {
        this.activeList.length = 0;
    },
    retain: function (binding) {
        this.activeList.push(binding);
    }
};

function queryActiveBindings() {
    bindingPool.recycleAll();

    //loop through the key binding groups by number of keys.
    for (var keyCount = keyBindingGroups.length; keyCount > -1; keyCount -= 1) {
        if (keyBindingGroups[keyCount]) {
            var KeyBindingGroup = keyBindingGroups[keyCount];

            //loop through the key bindings of the same key length.
            for (var bindingIndex = 0; bindingIndex < KeyBindingGroup.length; bindingIndex += 1) {
                var binding = KeyBindingGroup[bindingIndex],

                //assume the binding is active till a required key is found to be unsatisfied
                    keyBindingActive = true;

                //loop through each key required by the binding.
                for (var keyIndex = 0; keyIndex < binding.keys.length; keyIndex += 1) {
                    var key = binding.keys[keyIndex];

                    //if the current key is not in the active keys array the mark the binding as inactive
                    if (activeKeys.indexOf(key) < 0) {
                        keyBindingActive = false;
                    }
                }

                //if the key combo is still active then retain it in the pool
                if (keyBindingActive) {
                    bindingPool.retain(binding);
                }
            }
        }
    }
    return bindingPool.activeList;
}
